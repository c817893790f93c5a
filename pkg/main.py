"""
Entry point: python main.py <command> ...
Same as the installed `betamorph` script.
"""
from app.cli.main import cli

if __name__ == "__main__":
    cli()
