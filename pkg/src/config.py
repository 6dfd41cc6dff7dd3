"""Configuration module for Ideal Cover"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Application configuration"""

    # Base paths
    BASE_DIR = Path(__file__).parent.parent
    LOGS_DIR = Path(os.getenv("LOGS_DIR", str(BASE_DIR / "logs")))

    # Logging
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_TO_FILE = os.getenv("LOG_TO_FILE", "false").lower() == "true"

    # LangFuse
    LANGFUSE_PUBLIC_KEY = os.getenv("LANGFUSE_PUBLIC_KEY", None)
    LANGFUSE_SECRET_KEY = os.getenv("LANGFUSE_SECRET_KEY", None)
    LANGFUSE_HOST = os.getenv("LANGFUSE_HOST", "https://us.cloud.langfuse.com")

    # Cover budgets. Budgets come from CLI flags only, never from the environment.
    DEFAULT_MAX_ROUNDS = 64
    DEFAULT_MAX_COMPOSITE_LEN = 4
    DEFAULT_MAX_ADDS = 4096

    # Fallback iteration of accelerate() when no widening applies
    ACCELERATION_ITERATIONS = 32

    # Safety cap on the Pre* fixpoint
    BACKWARD_MAX_ITERATIONS = 10000

    @classmethod
    def ensure_directories(cls):
        """Create the log directory when file logging is enabled"""
        if cls.LOG_TO_FILE:
            cls.LOGS_DIR.mkdir(parents=True, exist_ok=True)

    @classmethod
    def validate(cls):
        """Validate configuration values"""
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if cls.LOG_LEVEL.upper() not in valid_levels:
            raise ValueError(
                f"LOG_LEVEL must be one of {sorted(valid_levels)}, got {cls.LOG_LEVEL!r}"
            )
