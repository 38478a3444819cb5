import sys

from polylaw.cli import main

sys.exit(main())
