from .corpus import (
    DEFAULT_CORPUS as DEFAULT_CORPUS,
    CorpusEntry as CorpusEntry,
    EntryResult as EntryResult,
    load_corpus as load_corpus,
    run_corpus as run_corpus,
)
from .report import RunReport as RunReport
