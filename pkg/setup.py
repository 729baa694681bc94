"""Setup file for sgf."""

# Copyright (C) 2026 sgf contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions
# and limitations under the License.
from importlib.util import module_from_spec, spec_from_file_location
from pathlib import Path
from typing import List

from setuptools import find_packages, setup


def load_module(name: str = "sgf/__init__.py"):
    """Load a module from a path relative to this file without importing its dependencies."""
    location = str(Path(__file__).parent / name)
    spec = spec_from_file_location(name=name, location=location)
    module = module_from_spec(spec)  # type: ignore
    spec.loader.exec_module(module)  # type: ignore
    return module


def get_version() -> str:
    """Read ``__version__`` from ``sgf/__init__.py``.

    Returns:
        str: `sgf` version.
    """
    return load_module(name="sgf/__init__.py").__version__


def get_required_packages(requirement_files: List[str]) -> List[str]:
    """Packages listed in ``requirements/<name>.txt`` for every given name.

    Example:
        >>> get_required_packages(requirement_files=["base"])
        ['omegaconf>=2.1.1', 'pandas>=1.1.0', 'sympy>=1.9', 'tqdm>=4.62.0']
    """
    required_packages: List[str] = []
    for requirement_file in requirement_files:
        with open(f"requirements/{requirement_file}.txt", "r", encoding="utf8") as file:
            for line in file:
                package = line.strip()
                if package and not package.startswith(("#", "-f")):
                    required_packages.append(package)
    return required_packages


LONG_DESCRIPTION = (Path(__file__).parent / "README.md").read_text(encoding="utf8")
INSTALL_REQUIRES = get_required_packages(requirement_files=["base"])
EXTRAS_REQUIRE = {"dev": get_required_packages(requirement_files=["dev"])}


setup(
    name="sgf",
    version=get_version(),
    author="sgf contributors",
    description="sgf - Subgroups of free groups, profinite measure and certified constructions",
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    url="",
    license='Licensed under the Apache License, Version 2.0 (the "License")',
    python_requires=">=3.8",
    packages=find_packages(".", exclude=("tests", "tests.*", "tools", "tools.*", "examples", "examples.*")),
    install_requires=INSTALL_REQUIRES,
    extras_require=EXTRAS_REQUIRE,
    package_data={"": ["config.yaml"]},
    entry_points={"console_scripts": ["sgf=sgf.cli:main"]},
)
