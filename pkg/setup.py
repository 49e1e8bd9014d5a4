# setup.py

from setuptools import setup, find_packages

setup(
    name="PyDRTracker",
    version="0.1.0",
    description="Real-time correlation filter tracking with distractor repression and an OTB-style benchmark harness",
    packages=find_packages(),
    install_requires=[
        "numpy>=1.24",
        "scipy>=1.10",
        "pandas>=2.0",
        "matplotlib>=3.5",
        "pillow>=10.0",
        "pydantic>=2.0",
        "PyYAML>=6.0",
        "python-json-logger>=3.1",
    ],
    extras_require={
        "test": ["pytest>=8.0", "hypothesis>=6.100"],
    },
    entry_points={
        "console_scripts": [
            "drtrack=PyDRTracker.cli.main:main",
        ],
    },
    python_requires=">=3.9",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Image Recognition",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
)
