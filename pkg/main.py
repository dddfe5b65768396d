"""Command-Line Entry Point - Root Module.

Lets the verifier run from a checkout without installing the package.
It imports from the src package.
"""

from src.main import main, run

__all__ = [
    "main",
    "run",
]

if __name__ == "__main__":
    main()
