import json
import os
import tempfile

CROOKS_CHAIN = {
    "p0": ["1/2", "1/2"],
    "mats": [
        [["1/2", "1/2"], ["1/2", "1/2"]],
        [["2/3", "2/3"], ["1/3", "1/3"]],
    ],
}


class InputFilesMixin:
    """Temporary directory for the input files of one test"""

    def setUp(self):
        super().setUp()
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.tmp = directory.name

    def write(self, name: str, content) -> str:
        path = os.path.join(self.tmp, name)
        with open(path, "w") as handle:
            if isinstance(content, str):
                handle.write(content)
            else:
                json.dump(content, handle)
        return path
