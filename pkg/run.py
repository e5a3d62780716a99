import sys

from dotenv import load_dotenv

load_dotenv()

# Config reads the environment on import
from codewidth.cli import main  # noqa: E402

if __name__ == '__main__':
    sys.exit(main())
