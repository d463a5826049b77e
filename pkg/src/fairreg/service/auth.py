"""Bearer-token authentication: reads stay keyless, writes need a token."""

from __future__ import annotations

import hashlib
import secrets
import threading
import time
from dataclasses import dataclass, field

_PBKDF2_ITERATIONS = 50_000


@dataclass
class UserAccount:
    user_id: str
    email: str
    credential_hash: str
    created_at: float
    roles: set[str] = field(default_factory=lambda: {"user"})

    def has_role(self, role: str) -> bool:
        return role in self.roles or "admin" in self.roles


class DuplicateEmailError(ValueError):
    pass


def _hash_password(password: str, salt: str) -> str:
    digest = hashlib.pbkdf2_hmac(
        "sha256", password.encode("utf-8"), salt.encode("utf-8"), _PBKDF2_ITERATIONS
    )
    return f"{salt}${digest.hex()}"


class AuthStore:
    """In-memory accounts and bearer tokens."""

    def __init__(self, admin_emails: list[str] | None = None,
                 curator_emails: list[str] | None = None):
        self._users: dict[str, UserAccount] = {}  # keyed by email
        self._tokens: dict[str, str] = {}  # token -> email
        self._lock = threading.Lock()
        self._admin_emails = set(admin_emails or [])
        self._curator_emails = set(curator_emails or [])
        self._next_id = 0

    def register(self, email: str, password: str) -> UserAccount:
        with self._lock:
            if email in self._users:
                raise DuplicateEmailError(f"email already registered: {email}")
            self._next_id += 1
            roles = {"user"}
            if email in self._admin_emails:
                roles.add("admin")
            if email in self._curator_emails:
                roles.add("curator")
            account = UserAccount(
                user_id=f"u{self._next_id}",
                email=email,
                credential_hash=_hash_password(password, secrets.token_hex(8)),
                created_at=time.time(),
                roles=roles,
            )
            self._users[email] = account
            return account

    def login(self, email: str, password: str) -> str | None:
        with self._lock:
            account = self._users.get(email)
            if account is None:
                return None
            salt = account.credential_hash.split("$", 1)[0]
            if _hash_password(password, salt) != account.credential_hash:
                return None
            token = secrets.token_hex(16)
            self._tokens[token] = email
            return token

    def verify(self, token: str | None) -> UserAccount | None:
        if not token:
            return None
        with self._lock:
            email = self._tokens.get(token)
            return self._users.get(email) if email else None
