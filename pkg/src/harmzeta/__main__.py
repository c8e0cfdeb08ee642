import sys

from harmzeta.cli import main

sys.exit(main())
