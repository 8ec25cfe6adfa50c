import sys

from alphaperm.cli import main

sys.exit(main())
