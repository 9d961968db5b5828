"""
Entry point for running the sgcolor package directly
python -m sgcolor 으로 실행 가능
"""
import sys

from .main import main

if __name__ == "__main__":
    sys.exit(main())
