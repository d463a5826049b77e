"""Keyless REST API with token-authenticated writes."""

from .app import ApiError, ServiceState, create_app
from .auth import AuthStore, DuplicateEmailError, UserAccount
from .events import EVENT_KINDS, EventLog, UsageEvent

__all__ = [
    "ApiError",
    "AuthStore",
    "DuplicateEmailError",
    "EVENT_KINDS",
    "EventLog",
    "ServiceState",
    "UsageEvent",
    "UserAccount",
    "create_app",
]
