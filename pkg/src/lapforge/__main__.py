import sys

from lapforge.cli import main

sys.exit(main())
