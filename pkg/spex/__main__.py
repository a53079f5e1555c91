import sys

from spex.cli import main

sys.exit(main())
