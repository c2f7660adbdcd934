"""
Command Dispatcher

Command registration and routing for the CLI. Each handler returns an exit
code; detsynth errors are mapped to the documented codes here.
"""

import logging
from datetime import datetime
from typing import Any, Callable, Dict, List

from automata.errors import (
    DetsynthError,
    IncompleteSearchError,
    InvariantBreach,
    ResourceCapError,
    ValidationError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_VALIDATION = 2
EXIT_RESOURCE = 3
EXIT_INVARIANT = 4


def exit_code_for(error: Exception) -> int:
    if isinstance(error, ValidationError):
        return EXIT_VALIDATION
    if isinstance(error, (ResourceCapError, IncompleteSearchError)):
        return EXIT_RESOURCE
    if isinstance(error, (InvariantBreach, DetsynthError)):
        return EXIT_INVARIANT
    raise error


class CommandDispatcher:
    """
    CLI command router

    Features:
    - Command registration by name
    - Exit-code mapping for validation, resource and invariant failures
    - Per-command timing in the log
    """

    def __init__(self):
        self.commands: Dict[str, Callable[..., int]] = {}
        self.invocations = 0

    def register_command(self, name: str, handler: Callable[..., int]) -> None:
        self.commands[name] = handler
        logger.debug(f"Registered command: {name}")

    def dispatch(self, name: str, args: Any) -> int:
        """Run a command and translate its outcome into an exit code"""
        self.invocations += 1
        if name not in self.commands:
            raise ValueError(f"Unsupported command: {name}")
        start_time = datetime.now()
        try:
            code = self.commands[name](args)
        except ValidationError as e:
            for diagnostic in e.diagnostics:
                logger.error(f"{name}: {diagnostic}")
            return EXIT_VALIDATION
        except DetsynthError as e:
            logger.error(f"{name} failed: {e}")
            return exit_code_for(e)
        duration = (datetime.now() - start_time).total_seconds() * 1000
        logger.info(f"Command {name} finished with exit code {code} in {duration:.2f}ms")
        return code

    def get_command_list(self) -> List[str]:
        return sorted(self.commands)
