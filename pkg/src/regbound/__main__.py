import sys

from regbound.cli.main import main

sys.exit(main())
