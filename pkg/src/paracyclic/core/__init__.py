from paracyclic.core.config import EngineConfig
from paracyclic.core.errors import EngineError
from paracyclic.core.logging import get_logger, setup_logging

__all__ = ["EngineConfig", "EngineError", "get_logger", "setup_logging"]
