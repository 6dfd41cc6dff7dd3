"""LangFuse integration for tracing cover runs and CLI commands"""

import time
import uuid
from typing import Any, Dict, Optional

from src.config import Config
from src.utils.logger import setup_logger

logger = setup_logger("langfuse_manager")


def generate_run_id() -> str:
    """Generate a unique run ID for trace correlation"""
    return f"run_{uuid.uuid4().hex[:16]}"


# Global LangFuse client
_langfuse_client = None
_langfuse_enabled = False
_langfuse_initialized = False


def initialize_langfuse():
    """Initialize LangFuse client if credentials are available"""
    global _langfuse_client, _langfuse_enabled, _langfuse_initialized

    if _langfuse_initialized:
        return _langfuse_client
    _langfuse_initialized = True

    try:
        if Config.LANGFUSE_PUBLIC_KEY and Config.LANGFUSE_SECRET_KEY:
            from langfuse import Langfuse

            _langfuse_client = Langfuse(
                public_key=Config.LANGFUSE_PUBLIC_KEY,
                secret_key=Config.LANGFUSE_SECRET_KEY,
                host=Config.LANGFUSE_HOST,
            )
            _langfuse_enabled = True
            logger.info(f"LangFuse initialized successfully at {Config.LANGFUSE_HOST}")
        else:
            logger.debug("LangFuse credentials not provided - tracing disabled")
            _langfuse_enabled = False
    except ImportError:
        logger.warning("LangFuse package not installed - tracing disabled")
        _langfuse_enabled = False
    except Exception as e:
        logger.error(f"Failed to initialize LangFuse: {e}")
        _langfuse_enabled = False

    return _langfuse_client


def is_langfuse_enabled() -> bool:
    """Check if LangFuse tracing is enabled"""
    initialize_langfuse()
    return _langfuse_enabled


class RunTracer:
    """Context manager wrapping one traced run; a no-op when tracing is off"""

    def __init__(
        self,
        name: str,
        metadata: Optional[Dict[str, Any]] = None,
        run_id: Optional[str] = None,
    ):
        """
        Initialize tracer

        Args:
            name: Name of the trace
            metadata: Additional metadata, updated by the traced code
            run_id: Correlation ID (auto-generated if not provided)
        """
        self.name = name
        self.metadata = metadata or {}
        self.run_id = run_id or generate_run_id()
        self.metadata["run_id"] = self.run_id
        self.trace = None
        self.start_time = None

    def __enter__(self):
        """Start tracing"""
        self.start_time = time.time()
        if not is_langfuse_enabled():
            return self

        try:
            self.trace = _langfuse_client.trace(
                name=self.name, session_id=self.run_id, metadata=self.metadata
            )
        except Exception as e:
            logger.warning(f"Failed to start LangFuse trace '{self.name}': {e}")

        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """End tracing"""
        duration_ms = (time.time() - self.start_time) * 1000
        self.metadata["duration_ms"] = duration_ms
        logger.debug(f"Run '{self.name}' [{self.run_id}] took {duration_ms:.1f} ms")

        if exc_type is not None:
            self.metadata["error"] = str(exc_val)

        if not self.trace:
            return

        try:
            self.trace.update(metadata=self.metadata)
        except Exception as e:
            logger.warning(f"Failed to end LangFuse trace '{self.name}': {e}")


def flush_langfuse():
    """Flush LangFuse traces before the process exits"""
    if _langfuse_enabled and _langfuse_client:
        try:
            _langfuse_client.flush()
            logger.info("LangFuse traces flushed successfully")
        except Exception as e:
            logger.warning(f"Failed to flush LangFuse traces: {e}")
