from setuptools import setup, find_packages

setup(
    name="gaussian_tree_learning",
    version="0.1",
    packages=find_packages(exclude=['tests']),
    install_requires=[
        'numpy',
        'scipy',
        'tqdm',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': [
            'gtree=src.experiments.cli:main',
        ],
    },
)
