import io
import os

from setuptools import find_packages, setup

HERE = os.path.dirname(os.path.abspath(__file__))


def _get_version():
    """ Get version by parsing _version programmatically """
    version_ns = {}
    with open(os.path.join(HERE, "stirling_trees", "_version.py")) as f:
        exec(f.read(), {}, version_ns)
    version = version_ns["__version__"]
    return version


def _get_long_description():
    with io.open(os.path.join(HERE, "landing-page.md"), encoding="utf8") as f:
        return f.read()


setup(
    name="stirling-trees",
    version=_get_version(),
    description=(
        "k-Stirling permutations, increasing trees, path diagrams and "
        "continued fractions of local types"
    ),
    long_description=_get_long_description(),
    long_description_content_type="text/markdown",
    license="Apache Software License",
    packages=find_packages(exclude=["tests"]),
    python_requires=">=3.8",
    install_requires=["numpy", "scipy", "sympy", "termcolor"],
    include_package_data=True,
    entry_points={
        "console_scripts": ["stirling-trees=stirling_trees.cli:main"]
    },
    classifiers=[
        "License :: OSI Approved :: Apache Software License",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    extras_require={
        "pandas": ["pandas"],
        "testing": ["pytest", "hypothesis"],
    },
)
