import sys
import logging
from dotenv import load_dotenv
load_dotenv()  # ★ settings 임포트 전에!

from app.core.config import settings
from app.cli import run

# Setup logging (stderr only; stdout carries results)
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL, logging.WARNING),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
