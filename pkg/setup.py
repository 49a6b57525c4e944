# -*- coding: utf-8 -*-
from setuptools import setup, find_packages
from os import path

this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, 'docs/README.rst'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='pyfirstlook',
    version='1.0.0',
    description='Surface-adaptive inspection view planning with a deterministic simulation harness',
    long_description=long_description,
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    author='pyFirstLook contributors',
    install_requires=[
        'numpy>=1.22',
        'scipy>=1.8',
        'pydantic>=2.0',
        'PyYAML>=6.0',
        'matplotlib>=3.5',
        'crcmod==1.7',
    ],
    extras_require={
        'test': ['pytest>=7.0'],
    },
    entry_points={
        'console_scripts': [
            'pyfirstlook=pyFirstLook.Cli.Main:main',
        ],
    },
    python_requires='>=3.8',
    keywords=['inspection', 'view planning', 'LiDAR', 'UAV', 'point cloud'],
    license='MIT',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
)
