import sys

from estfuse.cli import main

sys.exit(main())
