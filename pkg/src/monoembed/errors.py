"""Exception taxonomy shared across the toolchain.

Library code raises these and never calls sys.exit; the CLI maps them to
exit codes (usage 2, input/validation 3, network 4).
"""


class MonoembedError(Exception):
    """Base class for all toolchain errors."""


class InputError(MonoembedError):
    """Invalid input data, file, or configuration."""


class NetworkError(MonoembedError):
    """Remote endpoint failed after bounded retries."""


class JavaParseError(MonoembedError):
    """A .java file could not be parsed into top-level declarations."""


class RepoRejection(MonoembedError):
    """A mined repository does not qualify as a microservices corpus."""

    def __init__(self, repo: str, reason: str):
        super().__init__(f"{repo}: {reason}")
        self.repo = repo
        self.reason = reason
