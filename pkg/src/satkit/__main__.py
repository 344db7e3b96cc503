import sys

from satkit.cli.main import main

sys.exit(main())
