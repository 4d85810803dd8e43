import sys

from nacrig.cli import main

sys.exit(main())
