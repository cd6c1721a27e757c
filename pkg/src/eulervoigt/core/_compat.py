"""
Shims for interpreters older than 3.11: ``StrEnum`` for status and kind
enums, ``tomllib`` for reading TOML configs.
"""

import sys

if sys.version_info >= (3, 11):
    import tomllib
    from enum import StrEnum
else:  # pragma: no cover - exercised only on old interpreters
    from enum import Enum

    import tomli as tomllib

    class StrEnum(str, Enum):
        """str-valued Enum whose members format as their value."""

        def __str__(self) -> str:
            return str(self.value)


__all__ = ["StrEnum", "tomllib"]
