"""Entry point for ``python main.py ...``; same as the ``misere`` console script."""

from misere.cli import run

if __name__ == "__main__":
    run()
