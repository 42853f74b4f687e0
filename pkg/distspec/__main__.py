import sys

from distspec.cli.main import main

sys.exit(main())
