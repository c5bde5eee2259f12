import sys

from lexkit.cli import main

sys.exit(main())
