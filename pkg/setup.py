from setuptools import find_packages, setup

setup(
    name='awtp-pd',
    version='1.0.0',
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={'awtp_pd': ['config.ini']},
    long_description=open('README.md').read(),
    python_requires='>=3.9',
    install_requires=[
        'pydantic>=2.5',
        'pydantic-settings>=2.1',
        'numpy>=1.26',
        'pandas>=2.2',
        'PyYAML>=6.0',
    ],
    entry_points={
        'console_scripts': [
            'awtp-pd=awtp_pd.cli.main:main',
        ],
    },
)
