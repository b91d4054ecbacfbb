#!/usr/bin/env python
# coding: utf-8

from setuptools import setup, find_packages

long_description = open('README.rst', 'r').read()

with open('VERSION') as version_file:
    version = version_file.read()
    version = version.strip()

install_requirements = [
    'numpy>=1.21',
    'Flask>=2.2,<2.3',
    'Werkzeug>=2.2,<2.3',
    'click>=8.0',
]

tests_requirements = [
    'Flask-Testing>=0.8.1',
    'coverage>=6.0',
]

setup(
    name='ellsigma',
    version=version,
    description='Orientação sigma circle-equivariante: engine numérico e verificador',
    long_description=long_description,
    packages=find_packages(exclude=['examples', 'examples.*']),
    package_data={'ellsigma.engine.config': ['logger.ini']},
    include_package_data=True,
    zip_safe=False,
    python_requires='>=3.7',
    install_requires=install_requirements,
    tests_require=tests_requirements,
    extras_require={'dev': tests_requirements},
    entry_points={
        'console_scripts': [
            'ellsigma = ellsigma.manager:main',
        ],
    },
)
