from setuptools import setup, find_packages

setup(
    name="coverideal_lab",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "annotated-types",
        "networkx",
        "numpy",
        "pydantic",
        "pydantic_core",
        "python-dotenv",
        "sympy",
        "tqdm",
        "typing_extensions",
    ],
    extras_require={
        "test": [
            "hypothesis",
            "pytest",
        ],
    },
    entry_points={
        "console_scripts": [
            "coverideal-lab=coverideal_lab.cli:main",
        ],
    },
    python_requires=">=3.9",
)
