import sys

from lcdcodes.cli import main

sys.exit(main())
