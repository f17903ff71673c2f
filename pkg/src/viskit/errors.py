"""Exception type shared by every module.

Each failure carries a short machine-readable ``code`` (``"bad_vertex"``,
``"cannot_preserve"``, ...) so callers and the CLI can branch on it.
"""


class VisError(ValueError):
    def __init__(self, code: str, detail: str = ""):
        self.code = code
        self.detail = detail
        super().__init__(f"{code}: {detail}" if detail else code)
