from rich.console import Console

_LEVELS = {"debug": 10, "info": 20, "warning": 30, "error": 40}


class LoggerService:
    """
    Console logger for the services.

    Everything goes to stderr so that stdout only ever carries command payloads
    (tables, series, JSON reports).
    """

    def __init__(self, level: str = "info"):
        self.console = Console(stderr=True, highlight=False, soft_wrap=True)
        self.level = level

    @property
    def level(self) -> str:
        return self._level

    @level.setter
    def level(self, value: str):
        if value not in _LEVELS:
            raise ValueError(f"Unknown log level: {value}")
        self._level = value

    def _emit(self, level: str, prefix: str, message: str, style: str = ""):
        if _LEVELS[level] < _LEVELS[self._level]:
            return
        self.console.print(f"{prefix} {message}", style=style or None, markup=False)

    def info(self, message: str):
        self._emit("info", "ℹ️", message)

    def warning(self, message: str):
        self._emit("warning", "⚠️", message, style="yellow")

    def error(self, message: str):
        self._emit("error", "❌", message, style="bold red")

    def debug(self, message: str):
        self._emit("debug", "🐛", message, style="dim")

    def success(self, message: str):
        self._emit("info", "✅", message, style="green")


logger_service = LoggerService()
def get_logger_service() -> LoggerService:
    """
    Dependency to get the logger service instance.
    Every service module grabs it once at import time.

    Returns:
        LoggerService: Instance of the logger service
    """
    return logger_service
