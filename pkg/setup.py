from setuptools import setup, find_packages

setup(
    name='schroederbij',
    version='1.0.0',
    packages=find_packages(exclude=['test']),
    package_data={
        'schroederbij': ['parameters/*.dat'],
    },
    install_requires=['tqdm>=4.43.0',
                      'numpy>=1.18.2',
                      'scipy>=1.4.5',
                      'sympy>=1.5.1',
                      'tabulate'],
    extras_require={
        'parallel':  ['dask[distributed]>=2.6.0'],
        'testing': ['flake8', 'pytest', 'hypothesis'],
        'documentation': ['sphinx', 'sphinx_rtd_theme', 'autodocsumm'],
    },
    entry_points={
        'console_scripts': ['schroederbij=schroederbij.cli:main'],
    },
    license='MIT',
    description='Hill statistics on Schröder paths, their bijections, di-sk trees '
                + 'and separable permutations',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    python_requires='>=3.7',
    keywords='combinatorics schroeder paths bijections riordan arrays separable permutations',
)
