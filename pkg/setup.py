import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

requirements = [
    "networkx",
    "numpy",
    "pydot",
    "scipy"
]

setuptools.setup(
    name='pyradcool',
    version='1.0.0',
    author="The pyradcool developers",
    description="Radiative cooling of a superconducting resonator: "
                "simulation and estimation",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["examples", "examples.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    install_requires=requirements,
    entry_points={
        "console_scripts": ["pyradcool=pyradcool.cli.main:run"],
    },
)
