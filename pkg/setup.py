from setuptools import setup, find_packages

setup(
    name="EnzymeLogic",
    version="0.1",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[  # Add dependencies here
        "numpy",
        "numba",
        "scipy",
        "pandas",
        "networkx",
        "tqdm",
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": ["enzlogic=cli.main:main"],
    },
)
