"""Profile persistence: canonical JSON files under ``<data_dir>/profiles``.

Profile bytes are canonical (sorted keys, fixed layout, no timestamps) so
any build path producing the same profile writes identical files. Writes go
to a temp file in the same directory and are renamed into place, so a crash
never leaves a partially readable profile.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .compare import CorpusProfile
from .errors import UnknownProfile


def fingerprint_paths(paths) -> str:
    """SHA-256 over the named lexicon files (order-independent)."""
    digest = hashlib.sha256()
    for path in sorted(str(p) for p in paths):
        p = Path(path)
        digest.update(p.name.encode("utf-8"))
        digest.update(b"\0")
        digest.update(p.read_bytes())
        digest.update(b"\0")
    return digest.hexdigest()


@dataclass(frozen=True)
class StoredProfile:
    profile: CorpusProfile
    bundle_fingerprint: str

    def canonical_bytes(self) -> bytes:
        data = self.profile.as_dict()
        data["bundle_fingerprint"] = self.bundle_fingerprint
        return (json.dumps(data, sort_keys=True, indent=2) + "\n").encode("utf-8")

    @classmethod
    def from_bytes(cls, blob: bytes) -> "StoredProfile":
        data = json.loads(blob.decode("utf-8"))
        fingerprint = data.pop("bundle_fingerprint", "")
        return cls(CorpusProfile.from_dict(data), fingerprint)


class ProfileStore:
    def __init__(self, profiles_dir):
        self.profiles_dir = Path(profiles_dir)

    def path_for(self, name: str) -> Path:
        safe = "".join(c if (c.isalnum() or c in "-_") else "_" for c in name)
        return self.profiles_dir / f"{safe}.json"

    def save(self, stored: StoredProfile) -> Path:
        self.profiles_dir.mkdir(parents=True, exist_ok=True)
        target = self.path_for(stored.profile.name)
        fd, tmp_name = tempfile.mkstemp(dir=self.profiles_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(stored.canonical_bytes())
            os.replace(tmp_name, target)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
        return target

    def load(self, name: str) -> StoredProfile:
        path = self.path_for(name)
        if not path.exists():
            raise UnknownProfile(f"no stored profile named {name!r}")
        return StoredProfile.from_bytes(path.read_bytes())

    def names(self) -> list[str]:
        if not self.profiles_dir.exists():
            return []
        return sorted(p.stem for p in self.profiles_dir.glob("*.json"))
