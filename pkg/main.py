import sys

try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass

from src.cli import run


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
