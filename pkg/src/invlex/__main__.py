import sys

from invlex.cli import main

sys.exit(main())
