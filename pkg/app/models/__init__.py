from .catalog import ClassificationRun, MagmaClassRecord, VerificationRun, VerificationKind, VerificationStatus
