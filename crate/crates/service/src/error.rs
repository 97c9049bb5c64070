use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde_json::json;

#[derive(Debug, thiserror::Error)]
pub enum ServiceError {
    #[error("{0} not found")]
    NotFound(String),

    #[error(transparent)]
    Core(#[from] lotopt_core::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl ServiceError {
    pub fn status(&self) -> StatusCode {
        use lotopt_core::Error as E;
        match self {
            ServiceError::NotFound(_) => StatusCode::NOT_FOUND,
            ServiceError::Core(E::Io(_)) | ServiceError::Io(_) => StatusCode::INTERNAL_SERVER_ERROR,
            ServiceError::Core(_) => StatusCode::UNPROCESSABLE_ENTITY,
        }
    }
}

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let mut body = json!({ "error": self.to_string() });
        if let ServiceError::Core(lotopt_core::Error::Schema { path, line, column, .. }) = &self {
            body["path"] = json!(path);
            body["line"] = json!(line);
            body["column"] = json!(column);
        }
        if let ServiceError::Core(lotopt_core::Error::Validation { field, .. }) = &self {
            body["path"] = json!(field);
        }
        (self.status(), Json(body)).into_response()
    }
}

pub type Result<T, E = ServiceError> = std::result::Result<T, E>;
