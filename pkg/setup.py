#!/usr/bin/env python
# -*- coding: UTF-8 -*-
################################################################################
#
# Copyright (c) 2024 Baidu.com, Inc. All Rights Reserved
#
################################################################################
"""
Setup script.
"""
import io
import os
import re
from setuptools import setup

with io.open(os.path.join("pygivental", "__init__.py"), "rt", encoding='utf-8') as f:
    SDK_VERSION = re.search(r"SDK_VERSION = b'(.*?)'", f.read()).group(1)

setup(
    name='pygivental',
    version=SDK_VERSION,
    install_requires=[
        'orjson',
        'future',
        'sympy',
        'networkx'
    ],
    extras_require={
        'test': ['pytest']
    },
    python_requires='>=3.8',
    packages=[
        'pygivental',
        'pygivental.model',
        'pygivental.series',
        'pygivental.cohft',
        'pygivental.action',
        'pygivental.graphs',
        'pygivental.inversion',
        'pygivental.hierarchy',
        'pygivental.io',
        'pygivental.cli'
    ],
    entry_points={
        'console_scripts': [
            'givental = pygivental.cli.main:main'
        ]
    },
    license='Apache License 2.0',
    description='Givental group action on CohFT partition functions, with exact rational arithmetic'
)
