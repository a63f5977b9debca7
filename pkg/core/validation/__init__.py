from core.validation.certificates import CertificateValidator

__all__ = ["CertificateValidator"]
