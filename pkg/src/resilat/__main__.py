import sys

from resilat.cli import main

sys.exit(main())
