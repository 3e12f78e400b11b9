import sys

from tnorm_analogy.cli import main

sys.exit(main())
