"""
layerhom setup.py file for distribution
"""
from setuptools import setup, find_packages

setup(
    name="layerhom",
    version='0.1',
    description="Order homology of layered graphs and the Hilbert series of "
                "their splitting algebras",
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=['networkx', 'sympy', ],
    extras_require={
        'test': ['pytest', 'hypothesis', ],
    },

    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',

        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: Other/Proprietary License',

        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',

    ],
    python_requires='>=3.8',
    scripts=[
        'bin/layerhom',
    ],
)
