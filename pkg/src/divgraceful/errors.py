"""Exception type shared by every module.

Each error carries a short machine-readable ``code`` (for example
``"not-admissible"``) so the CLI can emit it as JSON.
"""

from __future__ import annotations


class LabelingError(ValueError):
    def __init__(self, code: str, message: str = "") -> None:
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.message = message

    def to_dict(self) -> dict:
        return {"error": self.code, "message": self.message}
