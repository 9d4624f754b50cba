use methods_catalog::CatalogError;
use region::RegionError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AmpError {
    #[error("region was not traced from this method's stability polynomial")]
    UntracedRegion,
    #[error("method has no stage beyond the first")]
    NoStages,
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}
