import sys

from sequence_graphs.cli import main

sys.exit(main())
