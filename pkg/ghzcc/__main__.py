import sys

from ghzcc import main

if __name__ == "__main__":
    sys.exit(main.run())
