#!/usr/bin/env python
# coding: utf-8


import os
from setuptools import setup, find_packages


exec(open('broomlab/version.py').read())  # load __version__
SCRIPT = os.path.join('broomlab', 'bin', 'broomlab')


setup(
    name='broomlab',
    description="Certified search workbench for rainbow brooms in "
                "proper edge colorings.",
    long_description=open("README.rst").read(),
    keywords="extremal graph theory, edge coloring, rainbow, exhaustive search",
    license="MIT",
    version=__version__,  # NOQA
    scripts=[SCRIPT],
    test_suite="tests",
    dependency_links=[],
    install_requires=open("requirements.txt").readlines(),
    tests_require=open("test_requirements.txt").readlines(),
    packages=find_packages(exclude=['broomlab.bin', 'tests']),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
