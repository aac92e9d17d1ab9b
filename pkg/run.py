#!/usr/bin/env python
"""
Entry point for the energy arena solvers.
"""
import sys
import logging

from src.config import Config

# Logs go to stderr; stdout carries JSON and CSV only
logging.basicConfig(
    level=getattr(logging, Config.LOG_LEVEL, logging.WARNING),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[logging.StreamHandler(sys.stderr)]
)
logger = logging.getLogger(__name__)

try:
    from src.api.cli import main
except Exception as e:
    logger.error(f"Failed to import modules: {e}")
    import traceback
    traceback.print_exc()
    sys.exit(1)

if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Interrupted")
        sys.exit(1)
