import setuptools
import glimca

with open("README.md") as f:
    long_description = f.read()

setuptools.setup(
    name                          = "glimca",
    version                       = glimca.__version__,
    author                        = "glimca authors",
    description                   = "Bounded experiments on generic limit sets of one-dimensional cellular automata",
    long_description              = long_description,
    long_description_content_type = "text/markdown",
    packages                      = setuptools.find_packages(exclude=["tests", "tests.*"]),
    install_requires              = [
        "numpy",
        "networkx",
    ],
    extras_require                = {
        "test": ["pytest", "hypothesis"],
    },
    entry_points                  = {
        "console_scripts": ["glimca=glimca.cli:main"],
    },
    classifiers                   = [
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: ISC License (ISCL)",
        "Operating System :: OS Independent",
    ],
    python_requires               = ">=3.7",
)
