"""Entry point for ``python -m reliability``."""

import sys

from reliability.analyze import main

if __name__ == "__main__":
    sys.exit(main())
