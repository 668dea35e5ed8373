from typing import List

from setuptools import find_packages
from setuptools import setup

import versioneer


def readme():
    with open("README.md") as f:
        return f.read()


requirements: List[str] = [
    "Click>=7.0",
    "jinja2",
    "numpy>=1.17",
    "scipy",
    "networkx>=2.4",
]
setup_requirements: List[str] = ["versioneer"]
test_requirements: List[str] = ["pytest"]

setup(
    name="dalpha",
    version=versioneer.get_version(),
    cmdclass=versioneer.get_cmdclass(),
    python_requires=">=3.7",
    description="Spectral radius of generalized distance matrices D_alpha",
    long_description=readme(),
    long_description_content_type="text/markdown",
    keywords="graph distance matrix spectral radius",
    license="MIT license",
    packages=find_packages(include=["dalpha", "dalpha.*"]),
    package_data={"dalpha": ["templates/*.txt"]},
    include_package_data=True,
    zip_safe=False,
    classifiers=[
        "Development Status :: 3 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={"console_scripts": ["dalpha=dalpha.cli:main"]},
    install_requires=requirements,
    setup_requires=setup_requirements,
    test_suite="tests",
    tests_require=test_requirements,
    extras_require={"test": test_requirements},
)
