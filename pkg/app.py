#!/usr/bin/env python3
"""
memchan - two-qubit channels with memory
Main entry point for the sweep / verify / figures commands
"""

import sys

from memchan.cli import main

if __name__ == '__main__':
    sys.exit(main())
