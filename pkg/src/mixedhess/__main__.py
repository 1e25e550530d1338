"""Allow ``python -m mixedhess``."""

import sys

from .cli import main

sys.exit(main())
