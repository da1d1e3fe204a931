import sys

from primeideal.cli import main

sys.exit(main())
