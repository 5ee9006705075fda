import pathlib
import setuptools
import io
import re

HERE = pathlib.Path(__file__).parent

README = (HERE / 'README.md').read_text()

with io.open("steenres/core/__init__.py", "rt", encoding="utf8") as f:
    version = re.search(r'__version__ = "(.*?)"', f.read()).group(1)

setuptools.setup(
    name="steenres",
    version=version,
    description="Minimal free resolutions of the mod 2 Steenrod algebra with signature filtrations",
    long_description=README,
    long_description_content_type='text/markdown',
    license="Apache-2.0",
    packages=setuptools.find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    include_package_data=True,
    install_requires=["ujson>=2.0", "numpy>=1.16.3", "matplotlib>=3.1"],
    entry_points={
        "console_scripts": ["steenres=steenres.cli:main"],
    },
    classifiers=[
        "Programming Language :: Python :: 3.6",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],

    python_requires='>=3.6'
)
