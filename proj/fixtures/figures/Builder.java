package com.example.encryption;

import java.util.HashMap;
import java.util.Map;

public class Builder {
    private String encryptionKey;
    private String signingKey;
    private Map<String, String> description = new HashMap<>();
    private String region;

    public Builder withEncryptionKey(String key) {
        this.encryptionKey = key;
        return this;
    }

    public Builder withSigningKey(String key) {
        signingKey = key;
        return this;
    }

    public Builder withDescription(Map<String, String> entries) {
        description.putAll(entries);
        return this;
    }

    public Builder withRegion(String region) {
        this.region = region;
        return this;
    }

    public Provider build() {
        if (encryptionKey == null) {
            throw new IllegalStateException("encryption key is required");
        }
        return new Provider(encryptionKey);
    }
}
