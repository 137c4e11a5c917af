from setuptools import setup, find_packages

setup(
    name="VolterraConvexity",
    version="0.1.0",
    packages=find_packages(where="src"),  # Tells setuptools to package any Python packages found in src
    package_dir={"": "src"},  # Tells setuptools that the packages are under src directory
    description="Radii of convexity of Volterra-type integral operators on the unit disc, "
                "with closed forms, numerical estimates and lemma audits.",
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    install_requires=[
        'openpyxl',  # xlsx reports
        'pandas',
        'numpy',
        'scipy',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['volterra-radius=Models.cli:main'],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.9',
)
