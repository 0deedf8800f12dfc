from os import path

from setuptools import setup, find_packages

here = path.abspath(path.dirname(__file__))

with open(path.join(here, '.version'), encoding='utf-8') as f:
    TARGET_VERSION = f.read()

with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='stacksort_roots',
    version=TARGET_VERSION,
    packages=find_packages(exclude=('tests',)),
    license='MIT',
    classifiers=[
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Operating System :: OS Independent'
    ],
    description='Descent statistics of t-stack sortable permutations and exact real-rootedness certificates '
                '(Sturm sequences, multiplier sequences, Jacobi polynomials) for their descent polynomials.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords='stack sorting permutations descents narayana real-rooted sturm multiplier-sequence jacobi',
    install_requires=[
        'sympy>=1.9',
    ],
    python_requires='>=3.8',
    test_suite='tests',
    entry_points={
        'console_scripts': ['stacksort-roots=stacksort_roots.cli:main']
    }
)
