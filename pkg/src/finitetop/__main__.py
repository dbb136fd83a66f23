import sys

from finitetop.cli import main

sys.exit(main())
