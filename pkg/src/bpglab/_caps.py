import os

from .errors import CapExceeded


def env_max_n() -> int | None:
    raw = os.environ.get("BPGLAB_MAX_N")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def check_cap(n: int, cap: int, what: str, override: bool = False) -> None:
    """Raise :class:`CapExceeded` when ``n > cap``.

    ``override`` or a larger ``BPGLAB_MAX_N`` lifts the cap.
    """
    if n <= cap or override:
        return
    env = env_max_n()
    if env is not None and n <= env:
        return
    raise CapExceeded(f"{what}: n={n} exceeds the cap {cap} "
                      "(pass the override flag or raise BPGLAB_MAX_N)")
