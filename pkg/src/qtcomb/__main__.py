import sys

from qtcomb.cli import main

sys.exit(main())
