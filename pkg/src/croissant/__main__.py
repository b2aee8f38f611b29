import sys

from croissant.cli import main

sys.exit(main())
