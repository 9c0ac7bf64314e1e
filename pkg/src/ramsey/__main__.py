import sys

from ramsey.cli import main

sys.exit(main())
