from setuptools import setup, find_packages
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, "README.md"), mode="r", encoding="utf-8") as f:
    long_description = f.read()

extras_require = {
    'dev': ([
        'pytest==6.2.3',
        'hypothesis==6.36.0',
        'flake8==3.9.0',
        'autopep8==1.5.6'
    ])
}

exclude_list = [
    "tests",
    "tests.*",
    "examples",
    "hooks",
    ".gitignore",
    ".git",
    ".github",
    "html"
]

setup(
    name="iam_simulator",
    version="0.1.0",
    author="VRAI Labs",
    license="Apache 2.0",
    description="Multi-account cloud IAM simulator: policy evaluation, audit logs and least-privilege analysis",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=exclude_list),
    package_data={
        "iam_simulator": ["data/*.json", "data/*.tsv"]
    },
    include_package_data=True,
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Intended Audience :: Developers",
        "Intended Audience :: System Administrators",
        "Topic :: Security",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
    keywords="iam policy simulator least-privilege audit",
    install_requires=[
        'jsonschema>=3.2.0',
        'typing_extensions>=3.10',
        'python-dateutil>=2.8.2',
        'PyYAML>=5.4.1'
    ],
    entry_points={
        'console_scripts': [
            'iam-simulator=iam_simulator.cli:main'
        ]
    },
    python_requires='>=3.7',
    extras_require=extras_require
)
