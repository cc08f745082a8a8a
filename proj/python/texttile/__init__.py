"""Multi-paragraph subtopic segmentation of expository text.

The heavy lifting lives in the compiled ``_texttile`` extension; this package
re-exports its public surface.
"""

from ._texttile import *  # noqa: F401,F403
from ._texttile import __version__  # noqa: F401
