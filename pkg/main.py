"""
BEI-GBG - биномиальные рёберные идеалы обобщённых блочных графов.

Точка входа в приложение.
"""
import sys

from cli import run


def main() -> int:
    """Запуск командной строки."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
